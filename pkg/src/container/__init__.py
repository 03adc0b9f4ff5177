"""Dependency injection container for mip-delegate."""

from .service_container import ServiceContainer, ServiceNotFoundError

__all__ = ["ServiceContainer", "ServiceNotFoundError"]
