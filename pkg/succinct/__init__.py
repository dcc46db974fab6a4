"""Application factory for the succinct data structures service."""


def create_app() -> "Flask":
    """Create and configure :class:`~flask.Flask` instance."""

    from flask import Flask, jsonify

    from .errors import SuccinctError, VerificationError

    app = Flask(__name__)
    app.config.from_object("config")

    from .bitvec_core import bp as bitvec_bp
    from .louds import bp as louds_bp
    from .dynamic_bitvec import bp as dbv_bp

    app.register_blueprint(bitvec_bp)
    app.register_blueprint(louds_bp)
    app.register_blueprint(dbv_bp)

    @app.errorhandler(SuccinctError)
    def handle_succinct_error(exc):
        app.logger.warning("rejected request: %s", exc)
        return jsonify(error=str(exc)), 400

    @app.errorhandler(VerificationError)
    def handle_verification_error(exc):
        app.logger.error("verification failed: %s", exc)
        return jsonify(error=str(exc), verified=False), 500

    @app.route("/")
    def index():
        """List the available endpoints."""
        return jsonify(
            endpoints=sorted(
                rule.rule for rule in app.url_map.iter_rules() if rule.endpoint != "static"
            )
        )

    return app
