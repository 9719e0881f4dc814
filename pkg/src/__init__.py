"""homkit package.

Exact construction and verification of finite-dimensional Hom-Hopf
algebraic objects over Q and GF(p): crossed products, cleft extensions,
biproducts, lazy cocycles and Yetter-Drinfeld modules.
"""

__version__ = "1.0.0"
