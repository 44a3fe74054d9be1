"""CMake-backed build for the lenicer extension module.

scikit-build-core would be the usual choice here; this setuptools shim keeps
the wheel buildable in environments where only setuptools is available.
"""

import os
import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    def build_extension(self, ext):
        source_dir = Path(__file__).parent.resolve()
        build_dir = Path(self.build_temp) / "cmake"
        build_dir.mkdir(parents=True, exist_ok=True)

        ext_path = Path(self.get_ext_fullpath(ext.name)).resolve()
        ext_path.parent.mkdir(parents=True, exist_ok=True)

        cmake_args = [
            f"-DCMAKE_BUILD_TYPE={os.environ.get('LENICER_BUILD_TYPE', 'Release')}",
            f"-DPython3_EXECUTABLE={sys.executable}",
            "-DLENICER_BUILD_TESTS=OFF",
        ]
        subprocess.run(
            ["cmake", "-S", str(source_dir), "-B", str(build_dir), *cmake_args],
            check=True,
        )
        subprocess.run(
            ["cmake", "--build", str(build_dir), "--target", "lenicer_py", "-j"],
            check=True,
        )

        staged = sorted((build_dir / "python" / "lenicer").glob("_core*"))
        if not staged:
            raise RuntimeError("CMake did not produce the _core module")
        self.copy_file(str(staged[0]), str(ext_path))


setup(
    packages=["lenicer"],
    package_dir={"lenicer": "python/lenicer"},
    ext_modules=[CMakeExtension("lenicer._core")],
    cmdclass={"build_ext": CMakeBuild},
    zip_safe=False,
)
