from setuptools import setup, find_packages

setup(
    name='milnezeta',
    version='0.0.1',
    description='Zeta-zero density, the repulsive Coulomb problem and its Milne phase-amplitude picture.',
    long_description=open('README.md').read(),
    long_description_content_type='text/markdown',
    packages=find_packages(exclude=['tests']),
    install_requires=[
        'numpy>=1.24',
        'scipy>=1.10',
        'pandas>=2.0.0',
        'pydantic==2.5.3',
        'pyyaml'
    ],
    extras_require={
        'test': ['pytest', 'mpmath'],
    },
    entry_points={
        'console_scripts': ['milnezeta = milnezeta.cli:main'],
    },
    classifiers=[
        'Programming Language :: Python :: 3',
        'License :: OSI Approved :: MIT License',
        'Operating System :: OS Independent',
    ],
    python_requires='>=3.9',
)
