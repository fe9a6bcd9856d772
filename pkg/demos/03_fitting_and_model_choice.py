"""Maximum-likelihood fitting and model choice on simulated data.

Data are drawn from a three-parameter sub-model (a = b = 1). Fitting
the full five-parameter family and two sub-models shows the expected
pattern: the full family always reaches at least the sub-models'
likelihood (nesting), but the information criteria charge for the
extra parameters and point back at the lean truth.

Run: python3 demos/03_fitting_and_model_choice.py  (about 15 seconds)
"""

from erlfit.baseline import BaselineParams
from erlfit.core import ErlParams, erl_sample
from erlfit.estimation import Dataset, FitConfig, fit_mle, nll, standard_errors
from erlfit.gof import info_criteria
from erlfit.submodels import get_model

TRUTH = ErlParams(1.0, 1.0, BaselineParams(theta=1.2, lam=1.4, beta=0.8))


def main():
    data = Dataset(erl_sample(500, TRUTH, seed=42))
    print(f"n = {data.n} draws from the a=b=1 sub-model "
          f"(theta=1.2, lam=1.4, beta=0.8)")
    print(f"nll at the generating parameters: {nll(TRUTH, data):.3f}")
    print()

    cfg = FitConfig(starts=6, seed=0)
    fits = []
    for name in ("RLD", "ExpLD", "ERLD"):
        spec = get_model(name)
        fit = standard_errors(fit_mle(spec, data, cfg), data)
        fits.append(fit)
        pieces = []
        for pname, value, err in zip(spec.free_names, spec.extract(fit.params), fit.se):
            shown = "  n/a" if err is None else f"{err:.3f}"
            pieces.append(f"{pname}={value:.3f} (se {shown})")
        print(f"{name:6s} k={fit.k}  nll={fit.nll:9.3f}  " + "  ".join(pieces))
    print()

    print("model   nll        aic        caic       hqic       bic")
    best = min(fits, key=lambda f: info_criteria(f.nll, f.k, f.n).aic)
    for fit in fits:
        crit = info_criteria(fit.nll, fit.k, fit.n)
        mark = "  <- selected (lowest aic)" if fit is best else ""
        print(
            f"{fit.spec.name:6s} {fit.nll:9.3f} {crit.aic:10.3f} {crit.caic:10.3f}"
            f" {crit.hqic:10.3f} {crit.bic:10.3f}{mark}"
        )
    print()

    full = next(f for f in fits if f.spec.name == "ERLD")
    for fit in fits:
        assert full.nll <= fit.nll + 1e-3, "nesting must hold"
    print("Nesting check: the five-parameter fit matches or beats every")
    print("sub-model's likelihood, yet the criteria prefer the lean model")
    print("that generated the data. (On other draws a rival three-parameter")
    print("model can win by a hair; the penalty against ERLD is the stable part.)")
    print()
    print("The command line gives the same report:")
    print("  erlfit compare --input draws.txt --models RLD,ExpLD,ERLD --seed 0")


if __name__ == "__main__":
    main()
