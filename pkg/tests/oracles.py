"""Slow, loop-based reference implementations used only by the tests.

Nothing here imports the package's numerical code; each function is written
straight from the defining formula so it can check the vectorised paths.
"""

import math

EPS = 1e-6


def tally(pixels):
    counts = [0] * 256
    for p in pixels:
        counts[int(round(p))] += 1
    return counts


def nearest(value, centroids):
    best, best_d = 0, math.inf
    for i, c in enumerate(centroids):
        d = abs(value - c)
        if d < best_d:
            best, best_d = i, d
    return best


def lloyd_per_pixel(pixels, k, max_iter=100):
    """Plain Lloyd iteration over every pixel, seeded i*max/(k+1).

    Returns the centroid sequence (seed first) and the final labels.
    """
    m = max(pixels)
    cents = [i * m / (k + 1) for i in range(1, k + 1)]
    seq = [list(cents)]
    labels = [nearest(p, cents) for p in pixels]
    for _ in range(max_iter):
        sums = [0.0] * k
        cnts = [0] * k
        for p, lab in zip(pixels, labels):
            sums[lab] += p
            cnts[lab] += 1
        cents = [sums[i] / cnts[i] if cnts[i] else cents[i] for i in range(k)]
        seq.append(list(cents))
        new = [nearest(p, cents) for p in pixels]
        if new == labels:
            break
        labels = new
    return seq, labels


def fcm_one_iteration(centers, x, expo):
    """One FCM sweep written as explicit loops.

    Returns (new_centers, objective, membership) where membership is the
    matrix computed from the incoming centers.
    """
    C, N = len(centers), len(x)
    p = -2.0 / (expo - 1.0)
    D = [[abs(x[k] - centers[i]) + EPS for k in range(N)] for i in range(C)]
    mu = [[0.0] * N for _ in range(C)]
    for k in range(N):
        denom = 0.0
        for j in range(C):
            denom += D[j][k] ** p
        for i in range(C):
            mu[i][k] = D[i][k] ** p / denom
    mf = [[mu[i][k] ** expo for k in range(N)] for i in range(C)]
    new = []
    for i in range(C):
        num = den = 0.0
        for k in range(N):
            num += mf[i][k] * x[k]
            den += mf[i][k]
        new.append(num / den)
    D2 = [[abs(x[k] - new[i]) + EPS for k in range(N)] for i in range(C)]
    obj = 0.0
    for i in range(C):
        for k in range(N):
            obj += D2[i][k] ** 2 * mf[i][k]
    return new, obj, mu


def two_pass_stats(values):
    n = len(values)
    mean = sum(values) / n
    var = sum((v - mean) ** 2 for v in values) / n
    return mean, math.sqrt(var)
