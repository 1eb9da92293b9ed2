int load(const char *path)
{
	try
	{
		open_file(path);
	}
	catch (const io_error &e)
	{
		log_error(e);
	}
	catch (...)
	{
		throw;
	}
	return 0;
}
