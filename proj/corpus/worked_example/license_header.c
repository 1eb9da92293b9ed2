/* ssl/s23_lib.c */
/* Copyright (C) 1995-1998 Eric Young (eay@cryptsoft.com)
 * line 3 of the original distribution notice
 * line 4 of the original distribution notice
 * line 5 of the original distribution notice
 * line 6 of the original distribution notice
 * line 7 of the original distribution notice
 * line 8 of the original distribution notice
 * line 9 of the original distribution notice
 * line 10 of the original distribution notice
 * line 11 of the original distribution notice
 * line 12 of the original distribution notice
 * line 13 of the original distribution notice
 * line 14 of the original distribution notice
 * line 15 of the original distribution notice
 * line 16 of the original distribution notice
 * line 17 of the original distribution notice
 * line 18 of the original distribution notice
 * line 19 of the original distribution notice
 */
