"""Build script for the optional compiled scan kernel.

The package is pure Python apart from camsad._identity_cy, which
accelerates the permutation-identity scans.  If Cython or a C compiler
is unavailable the build falls back to the pure-Python kernel, selected
automatically at import time.
"""

import warnings

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Skip the extension (with a warning) when compilation fails."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # missing compiler, broken toolchain
            warnings.warn(f"compiled kernel skipped: {exc}")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            warnings.warn(f"compiled kernel {ext.name} skipped: {exc}")


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        warnings.warn("Cython not available; building without the compiled kernel")
        return []
    return cythonize(
        [Extension("camsad._identity_cy", ["src/camsad/_identity_cy.pyx"])],
        language_level=3,
    )


setup(ext_modules=extensions(), cmdclass={"build_ext": OptionalBuildExt})
