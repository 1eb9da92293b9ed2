#include <stdio.h>
#include <objects.h>
#include "ssl_locl.h"
long ssl23_default_timeout(void)
{
	return(300);
}
int ssl23_num_ciphers(void)
{
	ssl_load_ciphers();
	ssl_sort_ciphers();
	return(ssl3_num_ciphers());
}
