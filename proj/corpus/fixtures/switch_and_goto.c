int dispatch(int op)
{
retry:
	switch (op)
	{
	case 1:
		op = step(op);
		break;
	case 2:
		goto retry;
	default:
		return -1;
	}
	while (op > 0)
	{
		if (op == 3)
			break;
		if (op == 5)
			continue;
		if (op == 7)
			break;
		op--;
	}
	return op;
}
