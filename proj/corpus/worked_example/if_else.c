int ssl23_check_state(SSL *s)
{
	clear_sys_error();
	ssl_flush_state(s);
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
}
