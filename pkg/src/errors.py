
# --- Exception hierarchy ---

class FormataError(Exception):
    """Base class for every error raised by formata."""


class GroupParseError(FormataError):
    """Malformed cycle notation or group file."""


class CapacityError(FormataError):
    """A group exceeds the configured order bound for enumeration."""


class GroupDomainError(FormataError):
    """A subgroup, element or normality precondition is violated."""


class UnsupportedGroupError(FormataError):
    """The input is outside what the algorithms support (nonsolvable, wrong formation)."""


class CharacterError(FormataError):
    """Invalid class function input: group mismatch, non-character, reducible where irreducible is required."""


class InternalInconsistencyError(FormataError):
    """A theorem-backed existence or uniqueness claim failed on actual data."""


class CatalogIntegrityError(FormataError):
    """A catalog group does not match its recorded invariants."""


class UnknownNameError(FormataError):
    """A catalog group or formation name that does not exist."""
