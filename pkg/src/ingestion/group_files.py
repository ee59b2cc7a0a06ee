# Builtin Imports
import os
import re

# Local Imports
from src.errors import GroupParseError
from src.groups.perm_group import PermGroup, generate
from src.groups.perms import format_cycles
from src.logger import get_logger




logger = get_logger("ingestion.group_files")

DEGREE_RE = re.compile(r"^degree\s+(\d+)$")
GROUP_FILE_SUFFIX = ".grp"


# --- Auxiliar Functions ---

def _content_lines(text: str) -> list:

    """(line number, stripped line) pairs with comments and blanks removed."""

    out = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((number, line))
    return out

def looks_like_group_file(name: str) -> bool:
    return name.endswith(GROUP_FILE_SUFFIX) or os.path.sep in name or os.path.isfile(name)


# --- Main Function ---

def parse_group_text(text: str, name: str = None) -> PermGroup:

    """
    Reads the text group format.

    Args:
        text (str): "degree N" on the first content line, then one generator
            per line in 0-based cycle notation. Blank lines and # comments
            are ignored.
        name (str): Optional. Name for the resulting group.

    Returns:
        PermGroup: The generated group.
    """

    lines = _content_lines(text)
    if not lines:
        raise GroupParseError("empty group file")

    number, header = lines[0]
    match = DEGREE_RE.match(header)
    if not match:
        raise GroupParseError(f"line {number}: expected 'degree N', got {header!r}")

    degree = int(match.group(1))
    if degree < 1:
        raise GroupParseError(f"line {number}: degree must be positive")

    words = []
    for number, line in lines[1:]:
        if DEGREE_RE.match(line):
            raise GroupParseError(f"line {number}: repeated degree line")
        words.append(line)

    try:
        return generate(degree, words, name=name)
    except GroupParseError as e:
        raise GroupParseError(f"{name or 'group file'}: {e}") from e

def format_group_text(G: PermGroup) -> str:

    """The text group format for G, one generator per line."""

    lines = [f"degree {G.degree}"]
    if G.name:
        lines.insert(0, f"# {G.name}")
    lines += [format_cycles(g) for g in G.generators]
    return "\n".join(lines) + "\n"

def read_group_file(path: str) -> PermGroup:

    """
    Loads a group file from disk.

    Args:
        path (str): Path to a .grp file.

    Returns:
        PermGroup: The group, named after the file stem.
    """

    try:
        with open(path, "r", encoding="utf-8") as f:
            text = f.read()
    except OSError as e:
        raise GroupParseError(f"cannot read group file {path}: {e}") from e

    name = os.path.splitext(os.path.basename(path))[0]
    G = parse_group_text(text, name=name)
    logger.debug(f"📝 Read {name}: degree {G.degree}, {len(G.generators)} generators")
    return G

def write_group_file(G: PermGroup, path: str) -> str:

    """Writes G in the text group format and returns the path."""

    with open(path, "w", encoding="utf-8") as f:
        f.write(format_group_text(G))
    logger.debug(f"📝 Wrote {path}")
    return path
