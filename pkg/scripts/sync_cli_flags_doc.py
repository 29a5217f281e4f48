import argparse
import difflib
import sys
from pathlib import Path

from ricci_idleness.config import RunConfig
from ricci_idleness.main import FRIENDLY_FLAGS, build_parser
from ricci_idleness.utils.cli_parser import add_pydantic_args

DOC_PATH = Path("docs/cli_flags.md")

HEADER = """# ricci-idleness CLI Flags

These command line flags are generated from the `RunConfig` schema. Any of them overrides the matching key of the yaml file passed with `-c`.

| Flag | Type | Description |
| --- | --- | --- |
"""

SHORTCUT_HEADER = """
## Shortcuts

Short flags for the keys used most often. Each one sets the config key next to it.

| Flag | Config key |
| --- | --- |
"""


def generate_doc() -> str:
    docs = add_pydantic_args(argparse.ArgumentParser(), RunConfig)
    flags = {action.dest: action.option_strings[0] for action in build_parser()._actions if action.option_strings}
    shortcuts = [f"| `{flags[dest]}` | `{key}` |" for dest, key in FRIENDLY_FLAGS.items()]
    return HEADER + "\n".join(docs) + "\n" + SHORTCUT_HEADER + "\n".join(shortcuts) + "\n"


def main() -> None:
    parser = argparse.ArgumentParser(description="Sync CLI flags documentation.")
    parser.add_argument("--check", action="store_true", help="Fail if doc is out of sync.")
    args = parser.parse_args()

    expected_content = generate_doc()
    if not args.check:
        DOC_PATH.write_text(expected_content)
        print(f"Updated {DOC_PATH}")
        return

    current_content = DOC_PATH.read_text() if DOC_PATH.exists() else ""
    if current_content == expected_content:
        print(f"{DOC_PATH} is in sync.")
        return
    print(f"Error: {DOC_PATH} is out of sync with RunConfig.")
    diff = difflib.unified_diff(
        current_content.splitlines(keepends=True),
        expected_content.splitlines(keepends=True),
        fromfile="current",
        tofile="expected",
    )
    sys.stdout.writelines(diff)
    print("Run `pdm run update:cli-flags` to update it.")
    sys.exit(1)


if __name__ == "__main__":
    main()
