"""Exact computations for symplectic reflection algebras of wreath products S_N x| Z/ell.

Submodules: ``arith`` (rationals and cyclotomic fields), ``gamma`` (the
cyclic group and its parameters), ``roots`` (McKay quiver and root data),
``symcomb`` (partitions and symmetric-group characters), ``rankone``
(simple modules in rank one), ``wreath`` (induced modules, deformations)
and ``cli``.
"""
__version__ = "0.1.0"
