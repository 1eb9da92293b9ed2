for (i = 0; i < 100; i++)
{
	printf("hello ");
	printf("world\n");
}
