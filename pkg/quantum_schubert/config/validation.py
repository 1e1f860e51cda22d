from typing import Any


def is_bool(field_name: str, field: Any) -> bool:
    return isinstance(field, bool)


def is_int(field: Any) -> bool:
    # bool is a subclass of int
    return isinstance(field, int) and not isinstance(field, bool)


def is_positive_int(field_name: str, field: Any) -> bool:
    if field is None:
        return False
    if not is_int(field):
        return False
    if field <= 0:
        return False
    return True


def is_nonnegative_int(field_name: str, field: Any) -> bool:
    if field is None:
        return False
    if not is_int(field):
        return False
    return field >= 0


def validate_max_n(field_name: str, max_n: Any) -> bool:
    # Gr(r,n) needs n >= 2
    if not is_positive_int(field_name, max_n):
        return False
    return max_n >= 2


def validate_rank(field_name: str, rank: Any) -> bool:
    if not is_positive_int(field_name, rank):
        return False
    return rank <= 8
