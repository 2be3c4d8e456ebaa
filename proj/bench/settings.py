"""Sweep the tuned recipe over the synthetic settings and print a summary.

Not part of the test suite. Example:

    PYTHONPATH=build/python python3 bench/settings.py --setting 2 --seeds 11-15 --scale 0.25
"""

import argparse
import statistics
import time

import sproga


def seed_range(text):
    lo, _, hi = text.partition("-")
    return range(int(lo), int(hi or lo) + 1)


def sweep(X, y, informative, args):
    G = sproga.build_graph(X, k=args.k, filter_pct=args.filter_pct)
    top = sproga.param_range(X, G)["lambda_max"]
    best_ari, best_nmi, best_margin, best_pd_fdr = -1.0, 0.0, -2.0, (0.0, 0.0)
    for step in args.lambda_steps:
        lam = top * args.rho1**step
        plain = sproga.fit(X, G, lam=lam, epsilon_rel=args.epsilon_rel, maxit=args.maxit)
        nu = sproga.adaptive_weights(X, plain["centers"])
        gmax = sproga.param_range(X, G, nu)["gamma_max"]
        warm = plain["centers"]
        for j in range(1, args.gamma_count + 1):
            fit = sproga.fit(X, G, lam=lam, gamma=gmax * args.rho2**j, nu=nu,
                             epsilon_rel=args.epsilon_rel, maxit=args.maxit,
                             initial_centers=warm)
            warm = fit["centers"]
            ari = sproga.adjusted_rand_index(fit["labels"], y)
            if ari > best_ari:
                best_ari = ari
                best_nmi = sproga.normalized_mutual_info(fit["labels"], y)
            pd, fdr = sproga.feature_pd_fdr(fit["selected_features"], informative)
            if pd - fdr > best_margin:
                best_margin, best_pd_fdr = pd - fdr, (pd, fdr)
    return best_ari, best_nmi, best_pd_fdr


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--setting", type=int, default=2, choices=[1, 2, 3, 4])
    ap.add_argument("--seeds", type=seed_range, default=seed_range("11-15"))
    ap.add_argument("--scale", type=float, default=0.25)
    ap.add_argument("--k", type=int, default=10)
    ap.add_argument("--filter-pct", type=float, default=0.0)
    ap.add_argument("--rho1", type=float, default=0.8)
    ap.add_argument("--rho2", type=float, default=0.5)
    ap.add_argument("--lambda-steps", type=lambda s: [int(v) for v in s.split(",")],
                    default=[6, 7])
    ap.add_argument("--gamma-count", type=int, default=5)
    ap.add_argument("--epsilon-rel", type=float, default=1e-2)
    ap.add_argument("--maxit", type=int, default=20000)
    args = ap.parse_args()

    rows = []
    for seed in args.seeds:
        X, y, informative = sproga.make_setting(args.setting, seed=seed, scale=args.scale)
        start = time.perf_counter()
        ari, nmi, (pd, fdr) = sweep(X, y, informative, args)
        took = time.perf_counter() - start
        rows.append((ari, nmi, pd, fdr))
        print(f"setting {args.setting} seed {seed}: n={X.shape[0]} p={X.shape[1]} "
              f"ARI {ari:.4f} NMI {nmi:.4f} PD {pd:.3f} FDR {fdr:.3f} ({took:.1f} s)")
    means = [statistics.fmean(col) for col in zip(*rows)]
    print("mean: ARI {:.4f} NMI {:.4f} PD {:.3f} FDR {:.3f}".format(*means))


if __name__ == "__main__":
    main()
