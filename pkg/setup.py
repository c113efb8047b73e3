"""Build hook for the optional compiled kernel extension.

The package is pure Python plus one Cython extension holding the hot
GF(2^m) inner loops.  If Cython or a C compiler is unavailable the
extension is skipped and the package falls back to the pure-Python
kernels at import time.
"""

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Build the extension if possible, otherwise install without it."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # missing compiler, etc.
            print(f"warning: compiled kernels skipped ({exc}); "
                  "pure-Python fallback will be used")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: building {ext.name} failed ({exc}); "
                  "pure-Python fallback will be used")


try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [Extension("crtseq._kernels", ["src/crtseq/_kernels.pyx"])],
        language_level=3,
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions, cmdclass={"build_ext": optional_build_ext})
