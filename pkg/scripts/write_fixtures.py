"""Regenerate the shipped state fixtures from the named-state catalog."""
from pathlib import Path

from trivec import catalog
from trivec.io import dumps

OUT = Path(__file__).resolve().parents[1] / "src" / "trivec" / "fixtures"


def main():
    OUT.mkdir(exist_ok=True)
    for name in catalog.FIXTURES:
        path = OUT / f"{name}.json"
        path.write_text(dumps(catalog.NAMED[name]().to_json()) + "\n")
        print(path)


if __name__ == "__main__":
    main()
