"""Write the committed job specs under jobs/.

Run from the repository root: ``python3 tools/make_jobs.py``.
"""

import json
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
JOBS = ROOT / "jobs"

FIXTURES = ["kz2", "kz3", "klein4", "s3", "oz2", "os3", "sweedler"]
CORRUPT = ["sweedler-bad-antipode", "klein4-bad-counit", "kz3-bad-comult"]


def job(algebra, checks, **extra):
    out = {"algebra": f"../../fixtures/{algebra}.json", "checks": checks}
    for k, v in extra.items():
        out[k] = f"../../fixtures/{v}.json" if k in ("cocycle", "lambda") else v
    return out


def acceptance():
    jobs = {}
    for name in FIXTURES + CORRUPT:
        jobs[f"c1-{name}"] = job(name, ["validate"])
    for name in FIXTURES:
        jobs[f"c2-{name}"] = job(name, ["cocycle-identity"])
        jobs[f"c3-{name}"] = job(name, ["specialize", "specialize-extension"])
        jobs[f"c6-{name}"] = job(name, ["coprod-sigma", "coideal", "antipode-sigma", "antipode-pq"])
        jobs[f"c8-{name}"] = job(name, ["pq-coinvariance", "mu-convolution", "pq-dual-path",
                                        "prop-nice", "pq-in-B"])
        jobs[f"c9-{name}"] = job(name, ["module-rewrite"])
    jobs["c2-klein4-sign"] = job("klein4", ["cocycle-identity"], cocycle="klein4-sign")
    jobs["c3-klein4-sign"] = job("klein4", ["specialize", "specialize-extension"], cocycle="klein4-sign")
    jobs["c5-klein4-sign"] = job("klein4", ["reduction"], cocycle="klein4-sign")
    jobs["c5-s3-coboundary"] = job("s3", ["reduction"], cocycle="s3-coboundary")
    for name in ["kz2", "s3", "sweedler", "oz2", "os3"]:
        jobs[f"c7-{name}"] = job(name, ["quotient-hab"])
    jobs["c10-kz2"] = job("kz2", ["membership:T_g*T_g", "membership:T_g", "group-determinant"])
    jobs["c10-kz3"] = job("kz3", ["group-determinant"])
    return jobs


def examples():
    return {
        "s3-module": job("s3", ["coprod-sigma", "prop-nice", "quotient-hab"]),
        "klein4-sign": job("klein4", ["cocycle-identity", "reduction"], cocycle="klein4-sign"),
        "sweedler-membership": job("sweedler", ["membership:T_x"], budget=10000),
        "s3-lambda": job("s3", ["specialize", "specialize-extension"], **{"lambda": "s3-lambda"}),
    }


def main():
    for sub, jobs in (("acceptance", acceptance()), ("examples", examples())):
        d = JOBS / sub
        d.mkdir(parents=True, exist_ok=True)
        for name, data in jobs.items():
            (d / f"{name}.json").write_text(json.dumps(data, indent=2) + "\n")
        print(f"{len(jobs)} jobs in {d}")


if __name__ == "__main__":
    main()
