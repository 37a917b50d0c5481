"""Drive the command-line pipeline end to end.

Every subcommand reads and writes plain JSON, stamps its report with the
tool version and the SHA-256 of each input file, and serializes with sorted
keys so identical inputs give byte-identical outputs.  This script runs

    gen-state -> certify -> lhv-check -> noise-threshold

in a temporary directory via subprocess, the way a shell user would.
"""

import json
import subprocess
import sys
import tempfile
from pathlib import Path


def run(*argv):
    cmd = [sys.executable, "-m", "hardycert", *argv]
    print("$", " ".join(argv))
    proc = subprocess.run(cmd, capture_output=True, text=True)
    if proc.returncode != 0:
        print(f"  exit {proc.returncode}: {proc.stderr.strip()}")
    return proc


with tempfile.TemporaryDirectory() as tmp:
    tmp = Path(tmp)
    state = tmp / "mixture.json"
    candidate = tmp / "candidate.json"
    noise = tmp / "noise.json"

    # Generate a noisy mixture, the pure reference it is built from, and a
    # pure product state to serve as a noise model.
    run("gen-state", "white-noise-mix", "--p", "0.99", "--output", str(state))
    run("gen-state", "hardy", "--output", str(candidate))
    run("gen-state", "product", "--output", str(noise))
    print()

    # Certify the mixture against the reference state.
    proc = run("certify", "--state", str(state), "--candidate", str(candidate))
    payload = json.loads(proc.stdout)
    report = payload["report"]
    print(f"  tool {payload['tool']['name']} {payload['tool']['version']}")
    for name, entry in payload["inputs"].items():
        print(f"  input {name}: sha256 {entry['sha256'][:16]}...")
    print(f"  epsilon = {report['epsilon']:.6f}, a = {report['a']:.6f}, "
          f"margin = {report['margin']:+.6f}")
    print(f"  verdict: {report['verdict']} (nonseparable: {report['nonseparable']})")
    print()

    # Omitting --candidate makes the tool use the state's top eigenvector
    # and report how well-separated that eigenvector is.
    proc = run("certify", "--state", str(state))
    auto = json.loads(proc.stdout)["report"]
    print(f"  auto candidate source: {auto['candidate']['source']}, "
          f"degeneracy gap {auto['candidate']['degeneracy_gap']:.4f}")
    print(f"  same verdict: {auto['verdict'] == report['verdict']}")
    print()

    # Cross-examine with the local-model LP.
    proc = run("lhv-check", "--state", str(state), "--candidate", str(candidate))
    lhv = json.loads(proc.stdout)["report"]
    print(f"  local model feasible: {lhv['feasible']}")
    print(f"  criterion margin recomputed: {lhv['criterion']['margin']:+.6f}")
    print(f"  verdicts consistent: {lhv['consistent']}")
    print()

    # Ask how much of an arbitrary noise state the reference can absorb.
    proc = run("noise-threshold", "--state", str(candidate), "--noise", str(noise))
    thresh = json.loads(proc.stdout)["report"]
    print(f"  noise distance = {thresh['d_noise']:.6f}")
    print(f"  certification holds for mixing weight p > {thresh['p_star']:.6f}")
    print()

    # Error handling: a Bell-type candidate has equal weights, which the
    # construction cannot use; the tool exits 2 with a message on stderr.
    bell = tmp / "bell.json"
    run("gen-state", "bell", "--output", str(bell))
    proc = run("lhv-check", "--state", str(state), "--candidate", str(bell))
    print(f"  (exit code {proc.returncode} is the documented failure mode)")
