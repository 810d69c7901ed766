"""Core type definitions used across the package."""

from typing import Callable

import numpy as np
import numpy.typing as npt

# Array aliases
ComplexVector = npt.NDArray[np.complex128]
ComplexMatrix = npt.NDArray[np.complex128]

# A linear map on operators, given as a matrix-on-matrices evaluator
ChannelEvaluator = Callable[[ComplexMatrix], ComplexMatrix]
