int print_values(void)
{
	// @iters 10
	for (i = 0; i < 1; i++)
	{
		printed = printf("value of i=%d", i);
	}
}
