"""Build script for the optional compiled search kernels.

The extension is an accelerator, not a requirement: when Cython is available
the .pyx is recompiled, otherwise the checked-in generated C is used, and if
no C compiler is present the build is skipped entirely and the package falls
back to the pure-Python kernels at import time.
"""

import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext
from setuptools.errors import CCompilerError, ExecError, PlatformError

EXT_NAME = "topocompat._kernels._ckernels"
PYX = os.path.join("src", "topocompat", "_kernels", "_ckernels.pyx")
C_SRC = os.path.join("src", "topocompat", "_kernels", "_ckernels.c")

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [Extension(EXT_NAME, [PYX], extra_compile_args=["-O3"])],
        language_level="3",
    )
except ImportError:
    if os.path.exists(C_SRC):
        extensions = [Extension(EXT_NAME, [C_SRC], extra_compile_args=["-O3"])]
    else:
        extensions = []


class OptionalBuildExt(build_ext):
    """Tolerate a missing or broken compiler; the pure backend still works."""

    def run(self):
        try:
            super().run()
        except (PlatformError, FileNotFoundError) as exc:
            self._skip(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except (CCompilerError, ExecError, PlatformError, FileNotFoundError) as exc:
            self._skip(exc)

    @staticmethod
    def _skip(exc):
        print(f"WARNING: building the compiled kernels failed ({exc}); "
              f"falling back to the pure-Python implementation")


setup(
    ext_modules=extensions,
    cmdclass={"build_ext": OptionalBuildExt},
)
