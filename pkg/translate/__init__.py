"""Translation of SPARC programs to weak-constraint (DLV) counterparts.

The package root only exposes cr-rule naming, which the grounder needs;
import ``translate.translator``, ``translate.pipeline`` or
``translate.external`` for the rest.
"""
from translate.naming import DEFAULT_NAME_SYMBOL, RuleName, name_cr_rule

__all__ = ["DEFAULT_NAME_SYMBOL", "RuleName", "name_cr_rule"]
