import time
from functools import wraps
import inspect
from typing import Dict, Any, Callable, Tuple

from .app_exceptions import PreconditionError
from .logger_config import logger

InputCheck = Tuple[Callable[[Any], bool], str]


def validate_operation(
    inputs: Dict[str, InputCheck] = None,
    performance_logging: bool = True,
):
    """
    Decorator for precondition validation and timing of library operations.

    Args:
        inputs: Dict of parameter checks, e.g.:
                {
                    'n': (lambda n: n >= 2, 'n must be at least 2'),
                    'p': (is_prime, 'p must be prime'),
                }
                Each predicate receives the bound argument value; a falsy
                result raises PreconditionError naming the parameter.
        performance_logging: log elapsed time at debug level
    """

    def decorator(func: Callable) -> Callable:
        sig = inspect.signature(func)

        @wraps(func)
        def wrapper(*args, **kwargs):
            start_time = time.perf_counter()
            function_name = func.__qualname__

            # === PRE-EXECUTION VALIDATION ===
            if inputs:
                bound_args = sig.bind(*args, **kwargs)
                bound_args.apply_defaults()

                for param_name, (predicate, message) in inputs.items():
                    value = bound_args.arguments.get(param_name)
                    try:
                        valid = predicate(value)
                    except TypeError:
                        valid = False
                    if not valid:
                        raise PreconditionError(
                            f"{function_name}: {message} (got {value!r})",
                            parameter=param_name)

            # === EXECUTE FUNCTION ===
            result = func(*args, **kwargs)

            if performance_logging:
                total_time = time.perf_counter() - start_time
                logger.debug(f"{function_name} completed in {total_time:.4f}s")

            return result

        return wrapper
    return decorator


def is_int(value) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def nonnegative_int(value) -> bool:
    return is_int(value) and value >= 0


def int_at_least(minimum: int) -> Callable[[Any], bool]:
    def check(value) -> bool:
        return is_int(value) and value >= minimum
    return check
