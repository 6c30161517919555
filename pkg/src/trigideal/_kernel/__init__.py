"""Kernel backend selection.

TRIGIDEAL_BACKEND controls which implementation of the inner loops is
used: "compiled" (or "cy") requires the Cython extension, "pure" (or
"py") forces the Python fallback, anything else (including unset) tries
the extension and falls back silently.
"""

import os

_choice = os.environ.get("TRIGIDEAL_BACKEND", "auto").strip().lower()

if _choice in ("pure", "py", "python"):
    from . import kernel_py as impl

    BACKEND = "pure"
elif _choice in ("compiled", "cy", "cython"):
    from . import kernel_cy as impl  # type: ignore[attr-defined]

    BACKEND = "compiled"
else:
    try:
        from . import kernel_cy as impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        from . import kernel_py as impl

        BACKEND = "pure"

EXP_LIMIT = impl.EXP_LIMIT
KIND_LEX = impl.KIND_LEX
KIND_GREVLEX = impl.KIND_GREVLEX
KIND_BLOCK = impl.KIND_BLOCK
exp_mul = impl.exp_mul
exp_div = impl.exp_div
exp_divides = impl.exp_divides
exp_lcm = impl.exp_lcm
exp_deg = impl.exp_deg
monomial_key = impl.monomial_key
monomial_cmp = impl.monomial_cmp
leading_exp = impl.leading_exp
find_divisor = impl.find_divisor
sub_scaled = impl.sub_scaled
mul_terms = impl.mul_terms
