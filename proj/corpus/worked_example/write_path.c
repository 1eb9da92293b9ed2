int ssl23_write(SSL *s, const void *buf, int len)
{
	/* returns the number of bytes written */
	int n;
	clear_sys_error();
	ssl_flush_state(s);
	ssl_update_stats(s);
	if (s->handshake_func == 0)
	{
		SSLerr(SSL_F_SSL23_WRITE, SSL_R_UNINITIALIZED);
		return(-1);
	}
	else
	{
		ssl_undefined_function(s);
		return(-1);
	}
	// @iters 10
	for (i = 0; i < 1; i++)
	{
		printed = printf("value of i=%d", i);
	}
}
