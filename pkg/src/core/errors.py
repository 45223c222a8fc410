class ConfigurationError(ValueError):
    """Invalid experiment or run configuration, raised before any run starts."""


class RunFailedError(RuntimeError):
    def __init__(self, problem: str, algorithm: str, run: int, cause: Exception | str):
        self.problem = problem
        self.algorithm = algorithm
        self.run = run
        self.cause = cause if isinstance(cause, str) else f"{type(cause).__name__}: {cause}"
        super().__init__(
            f"Run failed for (problem={problem}, algorithm={algorithm}, run={run}): {self.cause}"
        )

    def __reduce__(self):
        return type(self), (self.problem, self.algorithm, self.run, self.cause)
