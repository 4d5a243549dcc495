# Copyright (C) <2026>  <nevlab contributors>
# License: https://www.gnu.org/licenses/agpl-3.0.txt

import numpy as np
import scipy.ndimage

from nevlab.helpers.criterion.structs import ComponentProbe
from nevlab.helpers.errors import DomainError
from nevlab.helpers.inner import InnerFunction, inner_modulus


MIN_GRID = 64


def one_component_probe(theta: InnerFunction, r: float, grid_n: int = 256) -> ComponentProbe:
    """Counts the components of {|Theta| < r} on a raster of the disk.

    Cells of a grid_n x grid_n grid over [-1, 1]^2 whose centers lie in the
    disk are labelled with 4-connectivity. Components thinner than a cell
    are missed or split, so the count is a heuristic.
    """
    if grid_n < MIN_GRID:
        raise DomainError(f"grid_n must be >= {MIN_GRID}, got {grid_n}", field="grid_n")

    if not 0 < r < 1:
        raise DomainError(f"level r must lie in (0, 1), got {r}", field="r")

    centers = -1 + (2 * np.arange(grid_n) + 1) / grid_n
    z = centers[None, :] + 1j * centers[:, None]
    inside = np.abs(z) < 1

    mask = np.zeros(z.shape, dtype=bool)
    mask[inside] = inner_modulus(theta, z[inside]) < r

    _, count = scipy.ndimage.label(mask, structure=scipy.ndimage.generate_binary_structure(2, 1))

    return ComponentProbe(
        connected=count == 1,
        component_count=int(count),
        grid_n=grid_n,
        r=r,
        caveat=f"raster of {grid_n}x{grid_n} cells of width {2 / grid_n:.2e}; features below that size are not resolved"
    )
