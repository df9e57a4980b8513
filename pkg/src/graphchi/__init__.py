"""Virtual Euler characteristics of Out(F_n) and the even graph complex from formal power series."""
