int main(void)
{
	int i;
	for (i = 0; i < 100; i++)
	{
		printf("hello ");
		printf("world\n");
	}
	return 0;
}
