"""Service layer: pydantic models and the FastAPI application."""

from .app import app

__all__ = ["app"]
