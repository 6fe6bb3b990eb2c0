"""Small numeric helpers shared across modules."""


def int_byte_width(max_value: int) -> int:
    """Bytes needed to store integers in ``0..max_value`` at fixed width."""
    return max(1, (int(max_value).bit_length() + 7) // 8)


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test; fine at desk scale."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True
