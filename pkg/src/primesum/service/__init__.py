"""HTTP service exposing the core package.

Run standalone with: uvicorn primesum.service:app
"""

from .app import app, create_app

__all__ = ["app", "create_app"]
