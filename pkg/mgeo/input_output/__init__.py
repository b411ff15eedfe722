"""
Input and output

Reading of space strings, space-definition files and calculation files, and writing of .json, .jsonl and .svg files.
"""
