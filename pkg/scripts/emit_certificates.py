#!/usr/bin/env python3
"""Write validated pairing certificates for every row index up to a size.

Each file witnesses the full cancellation argument for one (n, i): the good
elements with their weights summing to b[i] * X_0, and the bad elements
arranged into weight-canceling pairs.

Example:
    python scripts/emit_certificates.py --max-size 4 --out-dir certs
"""

import argparse
import json
from pathlib import Path

from cramerkit import (
    build_certificate,
    certificate_to_dict,
    generic_system,
    validate_certificate,
)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-size", type=int, default=4)
    parser.add_argument("--out-dir", default="certs")
    args = parser.parse_args()

    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    for n in range(1, args.max_size + 1):
        sys = generic_system(n)
        for i in range(1, n + 1):
            cert = build_certificate(sys, i)
            validate_certificate(cert)
            path = out / f"pairing_n{n}_i{i}.json"
            path.write_text(
                json.dumps(certificate_to_dict(cert), indent=2) + "\n",
                encoding="utf-8",
            )
            print(
                f"{path}: good={len(cert.good)} pairs={len(cert.bad_pairs)}"
            )


if __name__ == "__main__":
    main()
