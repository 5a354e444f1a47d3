"""Build the optional compiled core.

The Cython extension ``thermograv._core`` accelerates the brute-force
series and the quadrature panels.  When Cython or a C compiler is not
available the package still installs and falls back to the pure-Python
implementation in ``thermograv._pycore``.
"""
import os
import sys

from setuptools import setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Do not fail the install when the extension cannot be compiled."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # noqa: BLE001
            print(f"warning: compiled core not built ({exc}); using pure Python", file=sys.stderr)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # noqa: BLE001
            print(f"warning: failed to build {ext.name} ({exc}); using pure Python", file=sys.stderr)


def extensions():
    if os.environ.get("THERMOGRAV_NO_EXT"):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    from setuptools import Extension

    # No -ffast-math: the compiled and pure-Python paths must round identically.
    ext = Extension(
        "thermograv._core",
        ["src/thermograv/_core.pyx"],
        extra_compile_args=["-O2", "-fno-fast-math", "-ffp-contract=off"],
    )
    return cythonize(
        [ext],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )


setup(ext_modules=extensions(), cmdclass={"build_ext": OptionalBuildExt})
