int broken(void)
{
	if (x) {
		y = 1;
}
