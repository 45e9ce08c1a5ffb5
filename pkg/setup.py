from setuptools import setup,find_packages

## GET VERSION
import versiontools
version = versiontools.get_python_version()

setup(
    name='pyPose6D',
    description='Set-prediction 6D object pose estimation with keypoint representations, EPnP and BOP evaluation',
    version=version,
    license='LICENSE',
    long_description=open('README.md').read(),
    long_description_content_type='text/markdown',
    classifiers = [
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'Natural Language :: English',
        'Operating System :: MacOS',
        'Operating System :: Microsoft',
        'Operating System :: Unix',
        'Programming Language :: Python',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3 :: Only',
        'Programming Language :: Python :: Implementation :: CPython',
        'Topic :: Scientific/Engineering',
        'Topic :: Scientific/Engineering :: Artificial Intelligence',
        'Topic :: Scientific/Engineering :: Image Recognition',
    ],
    keywords = '6D pose estimation keypoints cross-ratio EPnP set prediction hungarian matching BOP YCB-Video',
    python_requires='>=3.7',
    install_requires = ['numpy>=1.17.0','scipy>=1.8','pint','pandas','matplotlib>=3.5','plyfile'],
    extras_require = {'test':['pytest'],'opencv':['opencv-python-headless']},
    packages=find_packages(where='.'),
    package_data={'pyPose6D':['data/*.txt',
                              'test/data/*.ply','test/data/*.csv','test/data/*.txt',
                              'test/data/ycbv/*.json','test/data/ycbv/test/*/*.json']},
    entry_points={'console_scripts':['pypose6d=pyPose6D.cli.main:main']},
)
