from typing import List

from ..common.exceptions import ConfigError


def parse_int_range(text: str) -> List[int]:
    """
    解析整数范围参数："a..b"（含两端）、"a,b,c" 或单个整数，可混用："3..5,8"

    Raises:
        ConfigError: 格式不合法或 a > b
    """
    values: List[int] = []
    for part in str(text).split(","):
        part = part.strip()
        if not part:
            continue
        try:
            if ".." in part:
                low, high = (int(p) for p in part.split("..", 1))
                if low > high:
                    raise ConfigError(f"范围下界大于上界: {part}")
                values.extend(range(low, high + 1))
            else:
                values.append(int(part))
        except ValueError as e:
            raise ConfigError(f"无法解析整数范围: {text!r}") from e
    if not values:
        raise ConfigError(f"整数范围为空: {text!r}")
    return values
