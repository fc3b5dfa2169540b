"""Tests para MS-USER-PY"""

