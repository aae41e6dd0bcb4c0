#!/usr/bin/env python3
"""Decodes CLI-written PNG and BMP files with Pillow and compares pixels."""
import json
import random
import subprocess
import sys
import tempfile
from pathlib import Path

try:
    from PIL import Image
except ImportError:
    print("Pillow not installed; skipping")
    sys.exit(77)


def main():
    cli = sys.argv[1]
    rng = random.Random(7)
    with tempfile.TemporaryDirectory() as tmp:
        tmp = Path(tmp)
        w, h = 96, 64
        cover = Image.new("RGB", (w, h))
        cover.putdata([tuple(rng.randrange(256) for _ in range(3)) for _ in range(w * h)])
        cover.save(tmp / "cover.png")
        secret = Image.new("L", (12, 10))
        secret.putdata([255 * rng.randrange(2) for _ in range(120)])
        secret.save(tmp / "secret.png")

        for ext in ("png", "bmp"):
            out = tmp / f"stego.{ext}"
            r = subprocess.run([cli, "--json", "embed", "--cover", str(tmp / "cover.png"),
                                "--secret-g", str(tmp / "secret.png"), "--key", "pillow",
                                "--out", str(out)], capture_output=True, text=True)
            assert r.returncode == 0, r.stderr
            report = json.loads(r.stdout)
            stego = Image.open(out)
            assert stego.format == ext.upper(), stego.format
            assert stego.mode == "RGB" and stego.size == (w, h)
            # Pillow's MSE must agree with the CLI's PSNR report.
            a = list(cover.getdata())
            b = list(stego.getdata())
            sse = sum((x - y) ** 2 for pa, pb in zip(a, b) for x, y in zip(pa, pb))
            mse = sse / (3 * w * h)
            assert abs(mse - report["mse"]) < 1e-9, (mse, report["mse"])

            r = subprocess.run([cli, "extract", "--stego", str(out), "--key", "pillow",
                                "--size-g", "12x10", "--out-prefix", str(tmp / ext)],
                               capture_output=True, text=True)
            assert r.returncode == 0, r.stderr
            got = Image.open(tmp / f"{ext}_g.png")
            assert got.mode == "L" and got.size == (12, 10)
            assert list(got.getdata()) == list(secret.getdata())
    print("ok")


if __name__ == "__main__":
    main()
