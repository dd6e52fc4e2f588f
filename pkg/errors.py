# errors.py


class SymprodError(Exception):
    """
    Error surfaced to the command line with a process exit code.
    """

    exit_code = 1

    def __init__(self, detail: str):
        super().__init__(detail)
        self.detail = detail


class UsageError(SymprodError):
    exit_code = 2


class ResourceLimitError(UsageError):
    pass


class InvariantViolation(SymprodError):
    # a computed self-check failed; never silenced
    exit_code = 1
