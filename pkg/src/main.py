"""Entry point: ``python -m src.main``."""
from src.cli.run import app


def main() -> None:
    app(prog_name="wcol-turbo")


if __name__ == "__main__":
    main()
