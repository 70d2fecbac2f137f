#!/usr/bin/env python3
"""Independent MS-SSIM reference oracle.

Generates the golden image pairs under tests/data/ and prints reference
MS-SSIM values computed with TensorFlow's tf.image.ssim_multiscale plus a
standalone NumPy implementation of the same standard definition (11x11
Gaussian window, sigma 1.5, k1=0.01, k2=0.03, valid convolution, 2x2 mean
downsampling with edge padding to even sizes, luminance term at the
coarsest scale only). The two must agree; the printed values are frozen
into the C++ test suite.

Run from the repo root:  python3 scripts/msssim_reference.py
"""

import numpy as np
from scipy.signal import convolve2d

WEIGHTS5 = (0.0448, 0.2856, 0.3001, 0.2363, 0.1333)


def write_pgm(path, img):
    h, w = img.shape
    with open(path, "wb") as f:
        f.write(b"P5\n%d %d\n255\n" % (w, h))
        f.write(img.astype(np.uint8).tobytes())


def write_ppm(path, img):
    h, w, _ = img.shape
    with open(path, "wb") as f:
        f.write(b"P6\n%d %d\n255\n" % (w, h))
        f.write(img.astype(np.uint8).tobytes())


def pink_field(rng, h, w, slope=1.1):
    """Noise field with a 1/f^slope amplitude spectrum (natural-image-like)."""
    white = rng.standard_normal((h, w))
    spec = np.fft.fft2(white)
    fy = np.fft.fftfreq(h)[:, None]
    fx = np.fft.fftfreq(w)[None, :]
    f = np.sqrt(fy * fy + fx * fx)
    f[0, 0] = 1.0
    field = np.real(np.fft.ifft2(spec / f**slope))
    field -= field.min()
    field /= field.max()
    return field


def make_gray(rng, h, w):
    base = pink_field(rng, h, w)
    yy, xx = np.mgrid[0:h, 0:w]
    grad = 0.25 * (xx / w) + 0.15 * (yy / h)
    img = 35.0 + 170.0 * np.clip(0.75 * base + grad, 0.0, 1.0)
    return np.round(np.clip(img, 0, 255))


def noisy(rng, img, sigma):
    return np.round(np.clip(img + sigma * rng.standard_normal(img.shape), 0, 255))


def luma601(rgb):
    return 0.299 * rgb[..., 0] + 0.587 * rgb[..., 1] + 0.114 * rgb[..., 2]


def fspecial_gauss(size, sigma):
    c = (size - 1) / 2.0
    k = np.exp(-((np.arange(size) - c) ** 2) / (2.0 * sigma * sigma))
    k /= k.sum()
    return np.outer(k, k)


def ssim_scale(a, b, win, c1, c2):
    mu1 = convolve2d(a, win, mode="valid")
    mu2 = convolve2d(b, win, mode="valid")
    eaa = convolve2d(a * a, win, mode="valid")
    ebb = convolve2d(b * b, win, mode="valid")
    eab = convolve2d(a * b, win, mode="valid")
    va = eaa - mu1 * mu1
    vb = ebb - mu2 * mu2
    cov = eab - mu1 * mu2
    cs = (2.0 * cov + c2) / (va + vb + c2)
    lum = (2.0 * mu1 * mu2 + c1) / (mu1 * mu1 + mu2 * mu2 + c1)
    return cs.mean(), (lum * cs).mean()


def downsample2(p):
    h, w = p.shape
    if h % 2:
        p = np.vstack([p, p[-1:]])
    if w % 2:
        p = np.hstack([p, p[:, -1:]])
    return 0.25 * (p[0::2, 0::2] + p[0::2, 1::2] + p[1::2, 0::2] + p[1::2, 1::2])


def msssim_np(a, b, weights, L=255.0, size=11, sigma=1.5, k1=0.01, k2=0.03):
    a = a.astype(np.float64)
    b = b.astype(np.float64)
    win = fspecial_gauss(size, sigma)
    c1 = (k1 * L) ** 2
    c2 = (k2 * L) ** 2
    out = 1.0
    n = len(weights)
    for s in range(n):
        if s > 0:
            a = downsample2(a)
            b = downsample2(b)
        mcs, mlcs = ssim_scale(a, b, win, c1, c2)
        term = max(0.0, mlcs) if s == n - 1 else max(0.0, mcs)
        out *= term ** weights[s]
    return out


def msssim_tf(a, b, weights):
    import tensorflow as tf

    ta = tf.constant(a[..., None] if a.ndim == 2 else a, dtype=tf.float64)
    tb = tf.constant(b[..., None] if b.ndim == 2 else b, dtype=tf.float64)
    return float(
        tf.image.ssim_multiscale(ta, tb, max_val=255.0, power_factors=list(weights))
    )


def reduced_weights(mind, window=11):
    scales = min(5, int(np.floor(np.log2(mind / window))) + 1)
    w = np.array(WEIGHTS5[:scales])
    return tuple(w / w.sum())


def main():
    import os

    os.makedirs("tests/data", exist_ok=True)
    cases = []

    rng = np.random.default_rng(20240901)
    g = make_gray(rng, 256, 256)
    gn = noisy(rng, g, 8.0)
    write_pgm("tests/data/oracle_gray_ref.pgm", g)
    write_pgm("tests/data/oracle_gray_noised.pgm", gn)
    cases.append(("gray 256x256 sigma8", g, gn, WEIGHTS5))

    rgb = np.stack(
        [make_gray(np.random.default_rng(7 + i), 256, 256) for i in range(3)], axis=-1
    )
    rgbn = noisy(np.random.default_rng(99), rgb, 12.0)
    write_ppm("tests/data/oracle_rgb_ref.ppm", rgb)
    write_ppm("tests/data/oracle_rgb_noised.ppm", rgbn)
    cases.append(("rgb->luma 256x256 sigma12", luma601(rgb), luma601(rgbn), WEIGHTS5))

    rng2 = np.random.default_rng(424242)
    s = make_gray(rng2, 128, 128)
    sn = noisy(rng2, s, 6.0)
    write_pgm("tests/data/oracle_small_ref.pgm", s)
    write_pgm("tests/data/oracle_small_noised.pgm", sn)
    cases.append(("gray 128x128 sigma6 (4 scales)", s, sn, reduced_weights(128)))

    rng3 = np.random.default_rng(31337)
    o = make_gray(rng3, 203, 181)  # odd dims exercise the pad-to-even path
    on = noisy(rng3, o, 10.0)
    write_pgm("tests/data/oracle_odd_ref.pgm", o)
    write_pgm("tests/data/oracle_odd_noised.pgm", on)
    cases.append(("gray 181x203 sigma10 (odd dims)", o, on, WEIGHTS5))

    for name, a, b, w in cases:
        v_np = msssim_np(a, b, w)
        try:
            v_tf = msssim_tf(a, b, w)
            delta = abs(v_np - v_tf)
        except Exception as e:  # pragma: no cover
            v_tf, delta = float("nan"), float("nan")
            print(f"tf failed for {name}: {e}")
        print(f"{name}: numpy={v_np:.12f} tf={v_tf:.12f} |diff|={delta:.3e}")


if __name__ == "__main__":
    main()
