# Copyright SDSLIB CONTRIBUTORS 2024

from typing import Any, Dict, List, Optional
from sdslib.namedobject import NamedObject


class StateManager:
    """
    Keeps catalog objects in process memory, segregated by type and keyed by name.
    """

    _objects: Dict[str, Dict[str, NamedObject]] = {}

    @staticmethod
    def store(obj_type: type, obj: NamedObject) -> None:
        """Store an object by name, segregated by its type."""
        StateManager._objects.setdefault(obj_type.__name__, {})[obj.get_name()] = obj

    @staticmethod
    def get(obj_type: type, name: str) -> Any:
        """
        Retrieve an object by name and type.
        Returns None if not found.
        """
        return StateManager._objects.get(obj_type.__name__, {}).get(name, None)

    @staticmethod
    def values(obj_type: type) -> List[Any]:
        """
        All stored objects of a type, in insertion order.
        """
        return list(StateManager._objects.get(obj_type.__name__, {}).values())

    @staticmethod
    def clear(obj_type: type) -> None:
        """
        Forget every stored object of a type.
        """
        StateManager._objects.pop(obj_type.__name__, None)


def list_objects(obj_type: type, matches: Optional[str] = None) -> List[str]:
    """
    Returns a list of names of stored objects of given type, and optionally filter
    for those where name contains string provided in matches argument.
    """
    names = list(StateManager._objects.get(obj_type.__name__, {}))
    if matches is None:
        return names
    return [name for name in names if matches in name]
