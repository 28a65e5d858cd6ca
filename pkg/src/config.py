# src/config.py
"""Configuration options for the duality checker."""

import os

# Truth tables up to 2**20 entries keep brute-force checks under a few seconds.
CLASSICAL_ARITY_CAP = int(os.getenv("DUALITY_CLASSICAL_CAP", "20"))

# Largest statevector the simulator will allocate (2**26 complex128 = 1 GiB).
MAX_QUBITS = int(os.getenv("DUALITY_MAX_QUBITS", "26"))

DEFAULT_SEED = int(os.getenv("DUALITY_SEED", "0"))

# --- Grover schedule for an unknown number of solutions ---
GROVER_GROWTH = float(os.getenv("DUALITY_GROVER_GROWTH", "1.2"))
GROVER_RESTARTS = int(os.getenv("DUALITY_GROVER_RESTARTS", "20"))

DJ_REPETITIONS = int(os.getenv("DUALITY_DJ_REPETITIONS", "1"))

# Worker threads used by the bench command
BENCH_WORKERS = int(os.getenv("DUALITY_BENCH_WORKERS", "4"))
