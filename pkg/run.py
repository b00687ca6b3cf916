#!/usr/bin/env python3
"""
yv-census Application Entry Point

    python run.py generate 3 --format text
    python run.py verify --up-to 10 --all
    flask --app run census --up-to 25 --format csv
"""
from flask.cli import ScriptInfo
from app import create_app

# Create Flask app
app = create_app()


if __name__ == '__main__':
    # Run the registered commands without going through the `flask` launcher
    app.cli.main(prog_name='yv', obj=ScriptInfo(create_app=lambda: app))
