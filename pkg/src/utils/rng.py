"""
Flujos aleatorios con semilla

Toda la aleatoriedad sale de --seed a través de flujos con nombre.
Cada flujo se deriva como (seed, stream, index) sobre un generador
Philox (basado en contador), de modo que los ensayos se pueden
ejecutar en paralelo sin estado compartido.
"""
from typing import Dict

import numpy as np

# Códigos fijos de flujo; no reordenar (cambiaría todos los reportes)
STREAMS: Dict[str, int] = {
    "conditioning": 1,
    "rounding": 2,
    "ensemble": 3,
    "generator": 4,
    "verify": 5,
    "sweep": 6,
    "concentration": 7,
    "cdf": 8,
}


def stream(seed: int, name: str, index: int = 0) -> np.random.Generator:
    """
    Generador determinista para el flujo `name` y el índice `index`

    Args:
        seed: Semilla raíz de 64 bits
        name: Nombre del flujo (ver STREAMS)
        index: Índice de ensayo o celda

    Returns:
        np.random.Generator sobre Philox
    """
    if name not in STREAMS:
        raise KeyError(f"Flujo aleatorio desconocido: {name}")
    sequence = np.random.SeedSequence(
        entropy=int(seed) & 0xFFFFFFFFFFFFFFFF,
        spawn_key=(STREAMS[name], int(index))
    )
    return np.random.Generator(np.random.Philox(sequence))


def derive_seed(seed: int, name: str, index: int = 0) -> int:
    """Semilla entera de 63 bits derivada del flujo, para registrar en reportes"""
    generator = stream(seed, name, index)
    return int(generator.integers(0, 2**63 - 1))
