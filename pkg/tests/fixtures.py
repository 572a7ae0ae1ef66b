"""
Seeded triangle samplers shared by the test packages
"""

import math

import numpy as np

from src.geometry.core import Point, make_triangle, triangle_from_angles

SEED = 20240917


def rng(offset=0):
    return np.random.default_rng(SEED + offset)


def _placed(t, gen):
    """Rotate, scale, shift and maybe mirror a triangle, keeping its labels"""
    phi = gen.uniform(0, 2 * math.pi)
    k = gen.uniform(0.2, 5.0)
    dx, dy = gen.uniform(-10, 10, size=2)
    flip = -1.0 if gen.random() < 0.5 else 1.0
    c, s = math.cos(phi), math.sin(phi)

    def move(p):
        x, y = p.x, flip * p.y
        return Point(k * (c * x - s * y) + dx, k * (s * x + c * y) + dy)

    return make_triangle(move(t.A), move(t.B), move(t.C))


def acute_triangle(gen):
    # alpha >= 12 keeps the beta interval non-empty; every angle ends up in [10, 84.5]
    alpha = gen.uniform(12, 85)
    beta = gen.uniform(max(10, 95 - alpha) + 0.5, 84.5)
    return _placed(triangle_from_angles(alpha, beta, 1.0), gen)


def right_triangle(gen):
    # Right angle at A, built exactly so the class is not a rounding accident
    b, c = gen.uniform(0.3, 3.0, size=2)
    return make_triangle(Point(0.0, 0.0), Point(float(c), 0.0), Point(0.0, float(b)))


def obtuse_triangle(gen):
    alpha = gen.uniform(95, 160)
    beta = gen.uniform(5, 175 - alpha)
    return _placed(triangle_from_angles(alpha, beta, 1.0), gen)


def obtuse_sorted_triangle(gen):
    """Obtuse at A with a > b > c"""
    alpha = gen.uniform(95, 165)
    rest = 180 - alpha
    beta = gen.uniform(rest / 2 + 0.25, rest - 0.25)
    return _placed(triangle_from_angles(alpha, beta, 1.0), gen)


def sample(factory, count, offset=0):
    gen = rng(offset)
    return [factory(gen) for _ in range(count)]
