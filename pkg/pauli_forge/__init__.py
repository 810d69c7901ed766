"""pauli_forge: Pauli channels, Pauli dynamical maps and the circuits that implement them."""

__version__ = "0.1.0"
