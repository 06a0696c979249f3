"""Exact super Schur, super Jacobi (k = -1) and Euler supercharacter computations."""
from .euler import EulerChar, alternate_borel_euler, euler_closed, euler_glmn, serganova_euler
from .formatting import from_json_obj, to_json_obj, to_text
from .laurent import LaurentPoly, NotDivisible, NotInSubring, VarSpace, exact_divide, uv_to_xy, xy_to_uv
from .partitions import EVEN, ODD, HookContext, Partition, fat_hook_partitions
from .superjacobi import SJPoly, factorization_rhs, jt_specialized, specialized_sj, super_jacobi
from .superschur import berele_regev, super_schur_jt, super_schur_weyl
from .verify import SuiteConfig, run_suite

__all__ = [
    "EVEN",
    "ODD",
    "EulerChar",
    "HookContext",
    "LaurentPoly",
    "NotDivisible",
    "NotInSubring",
    "Partition",
    "SJPoly",
    "SuiteConfig",
    "VarSpace",
    "alternate_borel_euler",
    "berele_regev",
    "euler_closed",
    "euler_glmn",
    "exact_divide",
    "factorization_rhs",
    "fat_hook_partitions",
    "from_json_obj",
    "jt_specialized",
    "run_suite",
    "serganova_euler",
    "specialized_sj",
    "super_jacobi",
    "super_schur_jt",
    "super_schur_weyl",
    "to_json_obj",
    "to_text",
    "uv_to_xy",
    "xy_to_uv",
]
