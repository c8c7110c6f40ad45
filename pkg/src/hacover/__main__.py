from __future__ import annotations

import sys

from hacover.app.cli import cli_dispatch


def main() -> None:
	sys.exit(cli_dispatch(sys.argv[1:]))


if __name__ == "__main__":
	main()
