tag`a${b}`;
