# Copyright SDSLIB CONTRIBUTORS 2024

import sys
import logging
import pathlib
from datetime import datetime

LOG_FORMAT = "%(asctime)s - %(levelname)s - %(message)s"


def _level_from_name(lname: str) -> int:
    """
    Map a configured level name such as INFO onto the logging constant.
    """
    if hasattr(logging, "getLevelNamesMapping"):
        levels = logging.getLevelNamesMapping()
    else:  # Python < 3.11, same mapping as getLevelNamesMapping()
        levels = logging._nameToLevel.copy()  # pylint: disable=protected-access
    if lname.upper() not in levels:
        raise KeyError(f"Configured log level not recognized: {lname}")
    return levels[lname.upper()]


def init_logging(pyconfig: dict):
    """
    :param Config pyconfig:  configuration options parsed into python dict
    """
    if "logging" not in pyconfig:
        return
    cfg_dict = pyconfig["logging"]

    level = logging.ERROR
    if "level" in cfg_dict:
        level = _level_from_name(cfg_dict["level"])

    handlers = []

    if "console" in cfg_dict:
        console_set: str = str(cfg_dict["console"]).lower()
        if console_set.startswith("y"):
            console_handler = logging.StreamHandler(sys.stderr)
            console_handler.setLevel(level)
            console_handler.setFormatter(logging.Formatter(LOG_FORMAT, datefmt="%H:%M:%S"))
            handlers.append(console_handler)

    if "log_dir" in cfg_dict:
        log_dir = pathlib.Path(cfg_dict["log_dir"])
        log_dir.mkdir(parents=True, exist_ok=True)
        current_time = datetime.now().strftime("%Y%m%d_%H%M%S")
        invoker = pathlib.Path(sys.argv[0])
        log_file = log_dir / f"{current_time}_{invoker.name}.log"
        file_handler = logging.FileHandler(str(log_file))
        file_handler.setLevel(level)
        file_handler.setFormatter(logging.Formatter(LOG_FORMAT))
        handlers.append(file_handler)

    logging.basicConfig(level=level, handlers=handlers, force=bool(handlers))
