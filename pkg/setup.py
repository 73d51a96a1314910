"""Build script for the optional compiled scan kernels.

The package is pure Python except for seytight._fastscan, a Cython
translation of seytight._scan_py. If the extension cannot be built the
install still succeeds and the pure kernels are selected at import.
"""

import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Swallow compiler failures; the pure-Python kernels remain usable."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # no compiler, etc.
            self._warn(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._warn(exc)

    @staticmethod
    def _warn(exc):
        print(
            f"WARNING: compiled scan kernels not built ({exc}); "
            "falling back to the pure-Python kernels",
            file=sys.stderr,
        )


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    return cythonize(
        [Extension("seytight._fastscan", ["src/seytight/_fastscan.pyx"])],
        compiler_directives={
            "language_level": 3,
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )


setup(ext_modules=extensions(), cmdclass={"build_ext": optional_build_ext})
