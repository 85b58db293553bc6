import logging
from typing import Any, Dict, List, Optional, Type

from .base import TheoremBase
from .models import TheoremFamily, TheoremMetadata

logger = logging.getLogger(__name__)


class TheoremRegistry:
    """
    Registry of decomposition theorems: registration, lookup by name or alias,
    and one shared instance per theorem
    """

    def __init__(self):
        self._theorems: Dict[str, Type[TheoremBase]] = {}
        self._metadata: Dict[str, TheoremMetadata] = {}
        self._instances: Dict[str, TheoremBase] = {}
        self._aliases: Dict[str, str] = {}

    def register_theorem(
        self,
        theorem_class: Type[TheoremBase],
        metadata: Optional[TheoremMetadata] = None,
        aliases: Optional[List[str]] = None,
    ) -> bool:
        """
        Register a theorem class.

        Args:
            theorem_class: subclass of TheoremBase
            metadata: metadata, taken from theorem_class.get_metadata() when None
            aliases: extra names resolving to this theorem

        Returns:
            bool: whether registration succeeded
        """
        try:
            if not isinstance(theorem_class, type) or not issubclass(theorem_class, TheoremBase):
                raise ValueError(f"{theorem_class!r} must subclass TheoremBase")
            if metadata is None:
                metadata = theorem_class.get_metadata()

            name = metadata.name
            if name in self._theorems:
                logger.warning(f"theorem '{name}' already registered, replacing it")

            validation_errors = self._validate_metadata(metadata)
            if validation_errors:
                raise ValueError(f"invalid metadata: {', '.join(validation_errors)}")

            self._theorems[name] = theorem_class
            self._metadata[name] = metadata
            self._instances.pop(name, None)
            for alias in aliases or []:
                self._aliases[alias] = name

            logger.debug(f"registered theorem: {name} ({metadata.family.value})")
            return True

        except Exception as e:
            logger.error(f"failed to register theorem {getattr(theorem_class, '__name__', theorem_class)}: {e}")
            return False

    def unregister_theorem(self, name: str) -> bool:
        name = self.resolve_name(name)
        if name not in self._theorems:
            logger.warning(f"theorem '{name}' is not registered")
            return False

        dependents = [
            other for other, metadata in self._metadata.items()
            if name in metadata.dependencies and other != name
        ]
        if dependents:
            logger.error(f"cannot unregister '{name}': required by {dependents}")
            return False

        self._metadata.pop(name)
        del self._theorems[name]
        self._instances.pop(name, None)
        self._aliases = {alias: target for alias, target in self._aliases.items() if target != name}
        logger.debug(f"unregistered theorem: {name}")
        return True

    def resolve_name(self, name: str) -> str:
        return self._aliases.get(name, name)

    def get_theorem(self, name: str) -> Optional[TheoremBase]:
        """
        Shared instance of a registered theorem.

        Args:
            name: registry name or alias

        Returns:
            Optional[TheoremBase]: the instance, or None when unknown or disabled
        """
        name = self.resolve_name(name)
        if name not in self._theorems:
            logger.warning(f"theorem '{name}' is not registered")
            return None
        metadata = self._metadata[name]
        if not metadata.enabled:
            logger.warning(f"theorem '{name}' is disabled")
            return None

        if name not in self._instances:
            self._instances[name] = self._theorems[name](metadata)
        return self._instances[name]

    def require_theorem(self, name: str) -> TheoremBase:
        theorem = self.get_theorem(name)
        if theorem is None:
            raise KeyError(f"no theorem named '{name}'")
        return theorem

    def list_theorems(self) -> List[str]:
        return list(self._theorems.keys())

    def _validate_metadata(self, metadata: TheoremMetadata) -> List[str]:
        """
        Args:
            metadata: theorem metadata

        Returns:
            List[str]: validation errors
        """
        errors = []

        if not metadata.name.strip():
            errors.append("name must not be blank")
        if not metadata.description.strip():
            errors.append("description must not be blank")

        declared = metadata.parameters + list(metadata.defaults) + list(metadata.fixed)
        duplicates = {name for name in declared if declared.count(name) > 1}
        if duplicates:
            errors.append(f"parameters declared more than once: {sorted(duplicates)}")

        return errors

    def validate_dependencies(self) -> Dict[str, List[str]]:
        errors = {}
        for name, metadata in self._metadata.items():
            missing = [dep for dep in metadata.dependencies if dep not in self._theorems]
            if missing:
                errors[name] = [f"depends on unregistered theorem '{dep}'" for dep in missing]
        return errors

    def get_registry_stats(self) -> Dict[str, Any]:
        return {
            "total_theorems": len(self._theorems),
            "enabled_theorems": sum(1 for m in self._metadata.values() if m.enabled),
            "instantiated_theorems": len(self._instances),
            "aliases": dict(self._aliases),
            "families": {
                family.value: sum(1 for m in self._metadata.values() if m.family == family)
                for family in TheoremFamily
            },
        }


theorem_registry = TheoremRegistry()
