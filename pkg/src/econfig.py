'''
Manage configuration from the environment or a env file.
'''
import os
import dotenv

STURMLAB_SEED = "STURMLAB_SEED"
STURMLAB_LOG_LEVEL = "STURMLAB_LOG_LEVEL"
STURMLAB_JSON = "STURMLAB_JSON"

STURMLAB_CHART_WIDTH = "STURMLAB_CHART_WIDTH"
STURMLAB_CHART_HEIGHT = "STURMLAB_CHART_HEIGHT"

DEFAULT_SEED = 20150601
DEFAULT_LOG_LEVEL = "WARNING"
DEFAULT_CHART_WIDTH = 480
DEFAULT_CHART_HEIGHT = 240


def load_env():
    dotenv.load_dotenv()


def get_int(key: str, default: int | None = None, override: int | None = None) -> int | None:
    if override is not None:
        return override
    try:
        value = os.environ[key]
        result = int(value)
    except KeyError:
        result = default
    return result


def seed(override: int | None = None) -> int:
    return get_int(STURMLAB_SEED, DEFAULT_SEED, override=override)
