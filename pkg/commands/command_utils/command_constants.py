# Exit codes, report schema and environment variables shared by every command.

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2

REPORT_SCHEMA = 1

OUTCOME_OK = "ok"
OUTCOME_VIOLATION = "violation"
OUTCOME_INAPPLICABLE = "inapplicable"
OUTCOME_ERROR = "error"

THREADS_ENV = "DIOPH_THREADS"

# text output abbreviates integers longer than this many digits
TEXT_DIGITS = 40
