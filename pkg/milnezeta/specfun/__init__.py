from .gamma import arg_gamma, digamma, log_gamma, riemann_siegel_theta
