# 实例生成与基准测试

from .benchmark import BenchRecord, SuiteEntry, SuiteSpec, records_to_csv, run_benchmark, write_csv
from .errors import GeneratorError, SuiteError
from .generator import PRNG_NAME, GenParams, generate_counterexample, generate_instance

__all__ = [
    "BenchRecord",
    "GenParams",
    "GeneratorError",
    "PRNG_NAME",
    "SuiteEntry",
    "SuiteError",
    "SuiteSpec",
    "generate_counterexample",
    "generate_instance",
    "records_to_csv",
    "run_benchmark",
    "write_csv",
]
