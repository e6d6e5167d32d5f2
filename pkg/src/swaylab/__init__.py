"""swaylab: a multi-objective optimization laboratory.

Compares a sampling optimizer (recursive decision-space bi-clustering of
one large random population) against NSGA-II and SPEA2 on three software
engineering model families, with exact quality indicators, Scott-Knott
statistical ranking and an intrinsic-dimensionality probe.
"""

from .core import (BoundsError, BudgetExhausted, Candidate, DecisionSchema,
                   Dim, EvaluationBudget, MAXIMIZE, MINIMIZE, ProblemSpec,
                   constrained_dominates, dominates, evaluate, euclidean,
                   nondominated, random_population)
from .harness import (ConfigError, ExperimentConfig, OPTIMIZERS, RunRecord,
                      read_records, run_experiment, run_one, write_records)
from .intrinsic import (UndefinedDimension, correlation_curve,
                        correlation_integral, intrinsic_dimension)
from .metrics import (HV_REFERENCE_OFFSET, NormalizedFront,
                      UndefinedIndicator, hypervolume, normalize_fronts,
                      spread)
from .models import (MONRP_NAMES, POM3_NAMES, SCENARIO_NAMES, XOMO_NAMES,
                     make_problem)
from .moea import MoeaConfig, fast_nondominated_sort, nsga2, spea2
from .report import rank_tables, report
from .stats import (RankedTreatment, Treatment, a12, bootstrap_different,
                    scott_knott)
from .sway import (SwayConfig, split_continuous, split_discrete_monrp, sway)

__version__ = "0.1.0"
