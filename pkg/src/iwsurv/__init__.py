"""Inverse Weibull survival analysis toolkit.

Distribution analytics (density, hazard, moments, mean residual life and its
change point), maximum likelihood fitting, Anderson-Darling goodness of fit
with Monte Carlo calibration, Inverse Weibull vs Log-Logistic model
selection, and exact simulators for three generative mechanisms that lead to
Inverse Weibull lifetimes.
"""

from .distributions import (IWParams, LogLogisticParams, Model,
                            PolyHazardCoeffs, ShapeSummary, WeibullParams,
                            iw_cdf, iw_gamma23, iw_hazard, iw_mean, iw_moment,
                            iw_mrl, iw_pdf, iw_quantile, iw_sample, iw_sf,
                            iw_shape_summary, iw_variance, ll_cdf, ll_gamma23,
                            ll_moment, ll_mrl, ll_pdf, ll_quantile, ll_sample,
                            lognormal_gamma23, poly_cdf, poly_h, poly_H,
                            poly_mrl, poly_pdf, weibull_cdf, weibull_mle,
                            weibull_sample)
from .errors import (BracketError, CoefficientError, ConvergenceError,
                     DomainError, FitError, IwsurvError, MomentError,
                     StudyError, UndefinedStatisticError)
from .estimation import (FitReport, Sample, fit_iw_ml, fit_ll_ml, fit_model,
                         fit_poly_lsq, fit_poly_ml, loglik, mrl_at_sf,
                         rho_sq_hr, sample_gamma23)
from .gof import (ADResult, SelectionStudyResult, SelectionVerdict,
                  ad_pvalue_mc, ad_statistic, pivotality_check, select_model,
                  selection_study)
from .kernels import BACKEND as KERNEL_BACKEND
from .mechanisms import (DefensiveConfig, DeteriorationConfig,
                         StressStrengthConfig, defensive_cdf,
                         defensive_cdf_empirical, defensive_iw,
                         defensive_series_check, deterioration_iw,
                         max_stability_check, simulate_deterioration,
                         simulate_stress_strength, stress_strength_iw)

__version__ = "0.1.0"
