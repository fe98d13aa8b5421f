from . import exactla, multilinear, linkmaps, polyforms, bgg, proxies
