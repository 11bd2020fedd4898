"""Exact computations in U_q(sl2) and its Pierce-decomposed extensions."""
