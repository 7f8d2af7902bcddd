# MIT License
# Copyright (c) 2026, pyRACE developers
# See the LICENSE file at the root of the distribution.
# shared fixtures and dataset builders
pytest_plugins = ['tests.utils']
