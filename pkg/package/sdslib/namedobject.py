# Copyright SDSLIB CONTRIBUTORS 2024

from abc import ABC, abstractmethod


class NamedObject(ABC):
    """
    Catalog objects carry names, e.g. witnesses are looked up
    by a label such as (50;22,21;18)#1.
    """

    @abstractmethod
    def get_name(self) -> str:
        """
        Identifier (human readable name) of an object
        """
