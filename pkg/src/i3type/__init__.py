"""h-based I3-type multivariate indicators for scholars, universities and journals."""

from .core import (
    CitationProfile,
    CitationVector,
    HPartition,
    IndicatorRow,
    PublicationVector,
    SummaryStats,
    ValidationError,
    compute_h,
    e_index,
    i3_percentile,
    i3_scores,
    indicator_row,
    partition,
    summarize,
    vectors_from_summary,
    yh_scores,
)
from .dominance import IndicatorMatrix, Orientation, Verdict, dominates, dominates_tensor, pareto_front
from .ingest import Dataset, load, load_fixture, parse, parse_records, parse_summary, parse_vectors
from .stats import CorrelationCell, CorrelationMatrix, correlation_matrix, rank_entities, spearman_p, spearman_rho

__version__ = "0.1.0"
