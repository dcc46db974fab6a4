"""WSGI entry point for running the Flask application."""

from succinct import create_app

app = create_app()
