"""Registry of labeled statements used in certification trails.

Every verdict that rests on a mathematical statement carries the
labels of the statements used, and this table maps each label to its
one-sentence content so reports can be rendered self-contained.
"""

REGISTRY: dict = {}


def register(label: str, statement: str) -> str:
    """Register a labeled statement and return the label."""
    existing = REGISTRY.get(label)
    assert existing is None or existing == statement, label
    REGISTRY[label] = statement
    return label


def statement(label: str) -> str:
    return REGISTRY[label]
