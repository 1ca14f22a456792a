"""Economic sentiment lexicon toolkit: lexicon comparison, pessimism series,
and recession-forecast evaluation on top of the C++ core."""

from ._econlex import (  # noqa: F401
    EconlexError,
    Lexicon,
    aggregate_scores,
    auc_compare,
    category_counts,
    compare,
    correlate,
    ep_series,
    ep_series_from_files,
    load_lexicon,
    logit_mle,
    modify_disagree,
    modify_only_el,
    ols_newey_west,
    roc_auc,
    save_lexicon,
    score_tokens,
    segment,
    smooth_series,
    standardize_series,
    to_categorical,
    tokenize,
)

__all__ = [
    "EconlexError",
    "Lexicon",
    "aggregate_scores",
    "auc_compare",
    "category_counts",
    "compare",
    "correlate",
    "ep_series",
    "ep_series_from_files",
    "load_lexicon",
    "logit_mle",
    "modify_disagree",
    "modify_only_el",
    "ols_newey_west",
    "roc_auc",
    "save_lexicon",
    "score_tokens",
    "segment",
    "smooth_series",
    "standardize_series",
    "to_categorical",
    "tokenize",
]
