"""Service container for dependency injection."""

import inspect
import threading
from dataclasses import dataclass
from typing import Any, Callable, Dict, List


class ServiceNotFoundError(Exception):
    """Raised when a service is not found in the container."""


@dataclass(frozen=True)
class _Registration:
    factory: Callable
    singleton: bool


class ServiceContainer:
    """Dependency injection container for the benchmark harness.

    Class factories get their constructor parameters resolved by name from
    other registered services, falling back to parameter defaults. Function
    factories are called with the container.
    """

    def __init__(self) -> None:
        self._registrations: Dict[str, _Registration] = {}
        self._instances: Dict[str, Any] = {}
        self._lock = threading.RLock()

    def register(self, name: str, factory: Callable, singleton: bool = True) -> None:
        """Register a service factory.

        Args:
            name: Service name, also the constructor parameter it satisfies
            factory: Class or ``factory(container)`` function
            singleton: Reuse the first instance for every lookup
        """
        with self._lock:
            self._instances.pop(name, None)
            self._registrations[name] = _Registration(factory, singleton)

    def register_instance(self, name: str, instance: Any) -> None:
        """Register a ready-made service."""
        with self._lock:
            self._registrations.pop(name, None)
            self._instances[name] = instance

    def get(self, name: str) -> Any:
        """Resolve a service by name.

        Raises:
            ServiceNotFoundError: If service is not registered
        """
        if name in self._instances:
            return self._instances[name]
        registration = self._registrations.get(name)
        if registration is None:
            raise ServiceNotFoundError(f"Service '{name}' not found")
        if not registration.singleton:
            return self._build(registration.factory)

        # Re-entrant: building one singleton may resolve another
        with self._lock:
            if name not in self._instances:
                self._instances[name] = self._build(registration.factory)
            return self._instances[name]

    def _build(self, factory: Callable) -> Any:
        if not inspect.isclass(factory):
            return factory(self)
        kwargs = {}
        for param in list(inspect.signature(factory).parameters.values()):
            if self.has(param.name):
                kwargs[param.name] = self.get(param.name)
            elif param.default is param.empty and param.kind not in (
                param.VAR_POSITIONAL,
                param.VAR_KEYWORD,
            ):
                raise ServiceNotFoundError(
                    f"Cannot build {factory.__name__}: no service named '{param.name}'"
                )
        return factory(**kwargs)

    def has(self, name: str) -> bool:
        return name in self._registrations or name in self._instances

    def clear(self) -> None:
        """Forget every registration and instance."""
        with self._lock:
            self._registrations.clear()
            self._instances.clear()

    def get_all_service_names(self) -> List[str]:
        return sorted(set(self._registrations) | set(self._instances))
