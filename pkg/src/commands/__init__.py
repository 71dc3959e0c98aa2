"""
CLI command groups; each module exposes setup(subparsers, common, app)
"""

EXIT_OK = 0
EXIT_DOMAIN_ERROR = 1
EXIT_USAGE_ERROR = 2


class UsageError(Exception):
    """Bad arguments detected after parsing (exit status 2)"""
